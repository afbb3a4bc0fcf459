"""heckedim computes the Hausdorff dimension of Hecke triangle group limit sets."""

import logging

import click

from heckedim import cmd_asympt, cmd_certify, cmd_covers, cmd_dim, cmd_table, cmd_validate

LOG_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


@click.group()
@click.option("-v", "--verbose", count=True, help="Log to stderr; repeat for more detail.")
def cli(verbose: int):
    """heckedim: Hausdorff dimension of Hecke triangle groups."""
    logging.basicConfig(
        level=LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)],
        format="%(levelname)s %(name)s: %(message)s",
    )


cli.add_command(cmd_dim.main)
cli.add_command(cmd_table.main)
cli.add_command(cmd_validate.main)
cli.add_command(cmd_asympt.main)
cli.add_command(cmd_certify.main)
cli.add_command(cmd_covers.main)
if __name__ == "__main__":
    cli()

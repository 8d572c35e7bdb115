"""Entry point for the Balanced Sets command-line tool.

This module simply hands the command line to
:func:`balanced_sets.cli.main_cli.main`, which configures logging and runs
one command.
"""

import sys

from balanced_sets.cli.main_cli import main


if __name__ == "__main__":
    # The exit code tells scripts whether the input, a guard or a cross-check failed
    sys.exit(main())

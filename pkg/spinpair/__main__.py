"""Allow running the CLI as a module: python -m spinpair"""

from spinpair.cli import cli_main

if __name__ == "__main__":
    cli_main()

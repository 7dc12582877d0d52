"""Entry point for running hyperdepth as a module."""

from .cli.main import cli

if __name__ == "__main__":
    cli()

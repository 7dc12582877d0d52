"""Command line interface for hyperdepth."""

from .commands import HyperdepthCLI
from .main import cli


def main():
    """Entry point for the CLI."""
    cli()


__all__ = ["cli", "HyperdepthCLI", "main"]

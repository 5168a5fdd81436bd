#!/usr/bin/env python3
"""Main entry point for the Tree Cover Lab CLI."""

from .cli import cli


def main():
    cli()


if __name__ == "__main__":
    main()

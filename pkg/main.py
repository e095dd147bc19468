#!/usr/bin/env python3
"""
Seifert Positions - Main Entry Point
Exact computations on Seifert fibered surgeries on twisted torus knots and
tangle-constructed knots, and on the distinctness of their
primitive/Seifert positions.
"""

import sys
from commands.menu import CommandMenu


def main(argv=None) -> int:
    """Main entry point for the command-line tool."""
    try:
        return CommandMenu().run(argv)
    except KeyboardInterrupt:
        print("\ninterrupted", file=sys.stderr)
        return 130
    except BrokenPipeError:
        # output piped into head and friends
        return 0


if __name__ == "__main__":
    sys.exit(main())

"""Main entry point for the plactic-hopf command."""

import logging
import sys
from typing import Optional, Sequence


def setup_logging(verbosity: int = 0, log_file: Optional[str] = None):
    """Configure logging on stderr, with an optional file for warnings and errors.

    Args:
        verbosity: 0 logs warnings, 1 adds progress, 2 adds debug output.
        log_file: Path of a file that also receives warnings and errors.
    """
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)

    handlers = [
        logging.StreamHandler(sys.stderr)
    ]

    if log_file:
        try:
            file_handler = logging.FileHandler(log_file, encoding='utf-8')
            file_handler.setLevel(logging.WARNING)
            file_handler.setFormatter(logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s\n"
                "    File: %(pathname)s:%(lineno)d\n"
            ))
            handlers.append(file_handler)
        except (OSError, PermissionError) as e:
            # Continue without the file
            print(f"Warning: Could not create log file: {e}", file=sys.stderr)

    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None):
    """Run the plactic-hopf command line."""
    from plactic_hopf.cli.app import EXIT_USAGE, dispatch, parse_args

    args = parse_args(argv)
    if args is None:
        sys.exit(EXIT_USAGE)
    setup_logging(args.verbose, args.log_file)
    sys.exit(dispatch(args))


if __name__ == "__main__":
    main()

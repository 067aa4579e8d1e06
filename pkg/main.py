# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import argparse
import sys
import time

from dotenv import (
    load_dotenv
)
from helper import (
    build_table
)
from loggers import (
    get_logger,
    refresh_log_level,
)
from parser import (
    write_table
)
from utils import (
    CFLatticeError,
    ConfigError,
    parse_arguments,
)

load_dotenv()
refresh_log_level()
logging = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2

def run(argv: list[str] | None = None) -> int:
    """Main entry point for the script."""

    args: argparse.Namespace = parse_arguments(argv)

    logging.info(
        "Running subcommand",
        extra={
            "command": args.command,
            "config": args.config,
            "seed": args.seed,
        }
    )

    start = time.time()
    try:
        # Step 1: Load configuration and compute
        (header, rows), output = build_table(args)

        # Step 2: Write output
        write_table(header, rows, output)
    except ConfigError as e:
        logging.exception("Invalid configuration", stack_info=True, exc_info=True, extra={
            "command": args.command,
            "config": args.config,
            "key": e.key,
        })
        return EXIT_CONFIG
    except (CFLatticeError, OSError):
        logging.exception("Subcommand failed", stack_info=True, exc_info=True, extra={
            "command": args.command,
            "config": args.config,
            "out": args.out,
        })
        return EXIT_FAILURE
    end = time.time()

    logging.info(
        "Time profiling for subcommand",
        extra={
            "command": args.command,
            "second": f"{end - start:.2f}s"
        }
    )
    return EXIT_OK

if __name__ == "__main__":
    sys.exit(run())

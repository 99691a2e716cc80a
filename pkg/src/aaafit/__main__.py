"""Module entry point: `python -m aaafit`."""

import sys

from .cli import main

sys.exit(main())

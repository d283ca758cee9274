"""python -m lzero delegates to the CLI."""

import sys

from .cli import main

sys.exit(main())

"""``python -m snfpers`` entry point."""

import sys

from snfpers.cli import main

sys.exit(main())

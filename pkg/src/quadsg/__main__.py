"""Allow ``python -m quadsg``."""

import sys

from .cli import main

sys.exit(main())

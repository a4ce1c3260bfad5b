"""``python -m asdbench``."""

import sys

from asdbench.cli import main


sys.exit(main())

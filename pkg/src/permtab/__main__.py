import sys

from permtab.cli import main

sys.exit(main())

import sys

from blockstab.cli import main

sys.exit(main())

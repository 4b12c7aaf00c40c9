import sys

from menage_kit.cli import main

sys.exit(main())

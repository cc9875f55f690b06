import sys

from planarc5.cli import main

sys.exit(main())

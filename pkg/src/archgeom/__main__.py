import sys

from archgeom.cli import main

sys.exit(main())

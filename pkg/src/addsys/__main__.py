import sys

from addsys.cli import main

sys.exit(main())

import sys

from gfstream.cli import main

sys.exit(main())

import sys

from runshuffle.cli import main

sys.exit(main())

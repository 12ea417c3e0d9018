import sys

from sohilbert.cli import main

sys.exit(main())

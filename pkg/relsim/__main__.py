# relsim/__main__.py
import sys

from relsim.cli import main

sys.exit(main())

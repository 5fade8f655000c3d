import sys

from arctic.main import main

sys.exit(main())

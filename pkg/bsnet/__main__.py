import sys

from bsnet.main import main

sys.exit(main())

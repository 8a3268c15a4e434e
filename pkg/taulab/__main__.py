import sys

from taulab.main import main

sys.exit(main())

import sys

from zetaslp.app import main

sys.exit(main())

from fplab.cli import main
import sys

sys.exit(main())

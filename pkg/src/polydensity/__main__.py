from polydensity.cli import main
import sys

sys.exit(main())

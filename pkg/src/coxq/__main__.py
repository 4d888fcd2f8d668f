import sys

from coxq.cli import main

sys.exit(main())

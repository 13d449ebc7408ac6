from knotoids.cli import main

raise SystemExit(main())

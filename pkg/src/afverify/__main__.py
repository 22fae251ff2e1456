from afverify.cli import main

raise SystemExit(main())

from donoghue.cli import main

raise SystemExit(main())

"""python -m src.cli で CLI を実行"""

from src.cli.main import main

raise SystemExit(main())

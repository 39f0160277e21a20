import sys

if __name__ == "__main__" and __package__ is None:
    raise RuntimeError("请在项目根目录使用 `p -m cli` 运行该模块, 无需手动修改 sys.path")

from cli.app import main

sys.exit(main())

"""Run the HTTP service: ``python -m argmon.service``.

Requires the ``serve`` extra (uvicorn).
"""

from __future__ import annotations

import sys


def main() -> int:
    try:
        import uvicorn
    except ImportError:
        print(
            "uvicorn is not installed; install the package with the "
            "[serve] extra to run the service",
            file=sys.stderr,
        )
        return 1
    uvicorn.run("argmon.service.app:app", host="127.0.0.1", port=8000)
    return 0


if __name__ == "__main__":
    sys.exit(main())
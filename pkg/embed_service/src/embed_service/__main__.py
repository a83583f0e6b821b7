"""Run the service: python3 -m embed_service (port from EMBED_SERVICE_PORT)."""

import os

import uvicorn

from .app import create_app


def main() -> None:
    port = int(os.environ.get("EMBED_SERVICE_PORT", "8089"))
    uvicorn.run(create_app(), host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    main()

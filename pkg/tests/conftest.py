import os

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("GOEBEL_RUN_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow; set GOEBEL_RUN_SLOW=1 to enable")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)

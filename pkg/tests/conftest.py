import os

import pytest

from dp2delta.cli import CACHE_ENV, certificate_dict, compute_table


@pytest.fixture(scope="session")
def table_cache(tmp_path_factory):
    """Certificates for every table row, computed once into a cache directory."""
    path = tmp_path_factory.mktemp("certs")
    old = os.environ.get(CACHE_ENV)
    os.environ[CACHE_ENV] = str(path)
    rows = compute_table()
    certs = {(r["sing"], r["lines"]): certificate_dict(r["sing"], r["lines"]) for r in rows}
    if old is None:
        del os.environ[CACHE_ENV]
    else:
        os.environ[CACHE_ENV] = old
    return path, rows, certs

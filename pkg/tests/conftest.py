import importlib

import pytest

from qkl import _kernels_py

BACKENDS = [_kernels_py]
try:
    BACKENDS.append(importlib.import_module("qkl._kernels"))
except ImportError:  # extension not built
    pass


@pytest.fixture(params=BACKENDS, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def kernels(request):
    return request.param

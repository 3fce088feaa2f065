import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

here = os.path.dirname(os.path.abspath(__file__))

sources = [
    "python/src/module.cpp",
    "src/lie_core.cpp",
    "src/repcalc.cpp",
    "src/homrank.cpp",
    "src/classify.cpp",
    "src/parse.cpp",
    "src/verify.cpp",
]

ext = Pybind11Extension(
    "liehr._liehr",
    sources,
    include_dirs=["include", "vendor"],
    cxx_std=20,
    define_macros=[
        ("LIEHR_SOURCE_DATA_DIR", '"' + os.path.join(here, "data") + '"'),
    ],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})

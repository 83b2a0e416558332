import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

sources = [
    "bindings/module.cpp",
    "src/diagnostics.cpp",
    "src/harness.cpp",
    "src/io.cpp",
    "src/models.cpp",
    "src/rounding.cpp",
    "src/similarity.cpp",
    "src/spectral.cpp",
    "src/verify.cpp",
]

include_dirs = ["include", "vendor"]
for candidate in ("/usr/include/eigen3", "/usr/local/include/eigen3"):
    if os.path.isdir(candidate):
        include_dirs.append(candidate)
        break

setup(
    ext_modules=[
        Pybind11Extension(
            "specmatch._core",
            sources,
            include_dirs=include_dirs,
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; leadsto.kernels falls back
    ext_modules = []
else:
    import numpy as np

    ext_modules = cythonize(
        [
            Extension(
                "leadsto._ckernels",
                ["src/leadsto/_ckernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)

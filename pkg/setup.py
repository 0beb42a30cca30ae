import os
from setuptools import setup, find_packages

with open(os.path.join(os.path.dirname(__file__), 'README.md')) as readme:
    README = readme.read()

# allow setup.py to be run from any path
os.chdir(os.path.normpath(os.path.join(os.path.abspath(__file__), os.pardir)))

setup(
    name='qmc_relax',
    version='0.1.0',
    packages=find_packages("./"),
    install_requires=[
        'numpy',
        'scipy',
        'networkx',
        'cvxopt',
        'sympy',
        'mpmath',
        'click'
    ],
    include_package_data=True,
    license='BSD License',
    description='Certified lower bounds and rounding for Quantum Max Cut '
                'from second-order cone relaxations.',
    long_description=README,
    long_description_content_type='text/markdown',
    classifiers=[
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Physics',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    entry_points = {
        'console_scripts': [
            'qmr_generate=qmc_relax.CLI.qmr_generate:main',
            'qmr_solve=qmc_relax.CLI.qmr_solve:main',
            'qmr_exact=qmc_relax.CLI.qmr_exact:main',
            'qmr_round=qmc_relax.CLI.qmr_round:main',
            'qmr_sweep=qmc_relax.CLI.qmr_sweep:main',
            'qmr_ratio_lp=qmc_relax.CLI.qmr_ratio_lp:main',
            'qmr_verify=qmc_relax.CLI.qmr_verify:main'
        ]
    }
)

from setuptools import setup, find_packages

setup(
    name='thetanerve',
    packages=find_packages(exclude=["ci", "ci.*"]),
    package_data={"thetanerve": ["schemas/*.json"]},
    install_requires=[
        'numpy==1.26.4',
        'tqdm>=4.66.0',
        'omegaconf==2.3.0',
        'click>=8.1.0',
    ],
    entry_points={"console_scripts": ["thetanerve=thetanerve.cli:main"]},
)

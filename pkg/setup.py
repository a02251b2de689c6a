# setup.py
from setuptools import setup, find_packages

setup(
    name="covplan",
    version="1.0.0",
    description="Split conformal prediction with exact future-coverage laws and calibration-size planning",
    author="Your Team",
    author_email="your-email@domain.com",
    packages=find_packages(include=["src", "src.*"]),
    install_requires=[
        "numpy>=1.22",
        "scipy>=1.9",
        "pydantic>=2.5.0",
        "python-dotenv>=1.0.0",
        "pyyaml>=6.0.1",
        "pandas>=2.1.4",
        "click>=8.1.7",
        "colorama>=0.4.6",
        "tqdm>=4.66.1",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "covplan=src.main:main",
        ],
    },
)

"""
Runtime configuration read from the environment (and an optional .env file)
"""

import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

REPO_ROOT = Path(__file__).resolve().parent.parent


class Config:
    """Environment-backed settings; CLI flags override these"""

    LOG_LEVEL = os.environ.get('KUTTAKA_LOG_LEVEL', 'WARNING').upper()
    LOG_FORMAT = os.environ.get('KUTTAKA_LOG_FORMAT', 'console')

    FIXTURES_PATH = Path(os.environ.get(
        'KUTTAKA_FIXTURES',
        str(REPO_ROOT / 'fixtures' / 'paper_vectors.json')
    ))

    BENCH_TRIALS = int(os.environ.get('KUTTAKA_BENCH_TRIALS', 1000))
    BENCH_BITS = int(os.environ.get('KUTTAKA_BENCH_BITS', 32))
    BENCH_SEED = int(os.environ.get('KUTTAKA_BENCH_SEED', 2026))
    BENCH_WORKERS = int(os.environ.get('KUTTAKA_BENCH_WORKERS', 1))

"""Configuration settings for the Frobenius character toolkit."""
import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Resource guards
MAX_GROUND_SET = int(os.getenv("FROBENIUS_MAX_GROUND_SET", "20000"))
PARKING_ENUM_LIMIT = int(os.getenv("FROBENIUS_PARKING_ENUM_LIMIT", "7"))
POLLAK_ENUM_LIMIT = int(os.getenv("FROBENIUS_POLLAK_ENUM_LIMIT", "5"))
ELEMENT_ORACLE_LIMIT = int(os.getenv("FROBENIUS_ELEMENT_ORACLE_LIMIT", "5"))

# Self-verification
SELFTEST_MAX_N = int(os.getenv("FROBENIUS_SELFTEST_MAX_N", "6"))
RANDOM_SEED = int(os.getenv("FROBENIUS_RANDOM_SEED", "20240601"))

# Logging (stderr only; stdout carries JSON)
LOG_LEVEL = os.getenv("FROBENIUS_LOG_LEVEL", "WARNING").upper()

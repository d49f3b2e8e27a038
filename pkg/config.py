"""
Configuration settings for gaugelab.
"""
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

VERSION = "0.1.0"

# Ball enumeration
BALL_CAP = int(os.getenv("GAUGELAB_BALL_CAP", "5000000"))

# Probe fitting: largest exponent (m, d, l, p, k) tried before giving up
MAX_EXPONENT = int(os.getenv("GAUGELAB_MAX_EXPONENT", "8"))

# Consecutive strictly increasing levels needed before a probe reports "violated"
VIOLATION_RUN = int(os.getenv("GAUGELAB_VIOLATION_RUN", "5"))

# Numeric tolerances
GROUP_TOL = float(os.getenv("GAUGELAB_GROUP_TOL", "1e-9"))
EIG_TOL = float(os.getenv("GAUGELAB_EIG_TOL", "1e-9"))
GROWTH_RESIDUAL = float(os.getenv("GAUGELAB_GROWTH_RESIDUAL", "0.05"))

# A rising required constant counts as growth only if it rises at least this
# fraction of the rise of log(base) over the same levels
GROWTH_SLOPE = float(os.getenv("GAUGELAB_GROWTH_SLOPE", "0.5"))

# Sampling
MAX_SAMPLES = int(os.getenv("GAUGELAB_MAX_SAMPLES", "10000"))
CHAIN_SAMPLES = int(os.getenv("GAUGELAB_CHAIN_SAMPLES", "256"))
CHAIN_EXHAUSTIVE_LIMIT = int(os.getenv("GAUGELAB_CHAIN_EXHAUSTIVE_LIMIT", "4096"))
SAMPLER_LEVELS = int(os.getenv("GAUGELAB_SAMPLER_LEVELS", "10"))
# Largest |log singular value| of random GL(n) samples; larger spreads leave float64
SAMPLER_GL_LOG_SPREAD = float(os.getenv("GAUGELAB_SAMPLER_GL_LOG_SPREAD", "8"))

# Euclidean quadrature: largest direct-convolution work (multiply-adds) allowed
EUCLID_MAX_WORK = float(os.getenv("GAUGELAB_EUCLID_MAX_WORK", "2e9"))

# Progress bars on long loops
PROGRESS = os.getenv("GAUGELAB_PROGRESS", "").lower() in ("1", "true", "yes", "on")

# Data Storage Configuration
DATA_DIR = os.getenv("GAUGELAB_DATA_DIR", os.path.join(os.path.dirname(os.path.abspath(__file__)), "data"))
REPORTS_DIR = os.path.join(DATA_DIR, "reports")

# Logging Configuration
LOG_LEVEL = os.getenv("GAUGELAB_LOG_LEVEL", "INFO")
LOG_DIR = os.getenv("GAUGELAB_LOG_DIR", os.path.join(os.path.dirname(os.path.abspath(__file__)), "logs"))
os.makedirs(LOG_DIR, exist_ok=True)
LOG_FILE = os.path.join(LOG_DIR, "gaugelab.log")

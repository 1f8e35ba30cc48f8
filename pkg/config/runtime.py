import os
from dotenv import load_dotenv

load_dotenv()

# Logging
LOG_LEVEL_NAME = os.getenv('LIFTLAB_LOG', 'error').strip().lower()
LOG_DIR = os.getenv('LIFTLAB_LOG_DIR', 'logs')

LOG_LEVELS = {
    'error': 40,
    'info': 20,
    'debug': 10
}

# Certificates
CERT_SCHEMA = 'liftlab-cert/1'
REPORT_SCHEMA = 'liftlab-report/1'

import os
from typing import Dict, Any

from config.engine import ORACLE_CONFIG
from config.harness import GRID_CONFIG, MINDEG_CONFIG, SEARCH_CONFIG
from config.runtime import LOG_DIR, LOG_LEVEL_NAME, LOG_LEVELS
from utils.logger import harness_logger as logger


class ConfigValidator:
    """Validate system configuration"""

    def validate_all(self) -> Dict[str, Any]:
        """Run all configuration validations"""
        results = {
            'logging': self._validate_logging(),
            'grid': self._validate_grid(),
            'search': self._validate_search(),
            'oracle': self._validate_oracle()
        }

        # Determine overall status
        statuses = [r['status'] for r in results.values()]
        if 'error' in statuses:
            overall = 'invalid'
        elif 'warning' in statuses:
            overall = 'warning'
        else:
            overall = 'valid'

        results['overall_status'] = overall
        if overall != 'valid':
            logger.info(f"Configuration status: {overall}")
        return results

    def _validate_logging(self) -> Dict[str, Any]:
        """Validate LIFTLAB_LOG and the log directory"""
        if LOG_LEVEL_NAME not in LOG_LEVELS:
            return {
                'status': 'warning',
                'message': f"Unknown LIFTLAB_LOG value {LOG_LEVEL_NAME!r}, using 'error'"
            }
        if not os.access(LOG_DIR, os.W_OK):
            return {
                'status': 'warning',
                'message': f"Log directory {LOG_DIR} is not writable"
            }
        return {
            'status': 'valid',
            'level': LOG_LEVEL_NAME,
            'message': 'Logging configured'
        }

    def _validate_grid(self) -> Dict[str, Any]:
        """Validate verification grid defaults"""
        try:
            if GRID_CONFIG['max_genus'] < 0 or GRID_CONFIG['max_boundaries'] < 0:
                raise ValueError("grid bounds must be non-negative")
            if GRID_CONFIG['jobs'] < 1:
                raise ValueError("jobs must be at least 1")
            if any(g < 2 for g in GRID_CONFIG['closed_genera']):
                raise ValueError("closed genera must be at least 2")

            return {
                'status': 'valid',
                'message': 'Grid configuration valid'
            }
        except (KeyError, TypeError, ValueError) as e:
            return {
                'status': 'error',
                'message': str(e)
            }

    def _validate_search(self) -> Dict[str, Any]:
        """Validate search bounds"""
        if SEARCH_CONFIG['exhaustive_degree'] > 6 or MINDEG_CONFIG['max_degree'] > 6:
            return {
                'status': 'warning',
                'message': 'Exhaustive search beyond degree 6 is very slow'
            }
        return {
            'status': 'valid',
            'message': 'Search configuration valid'
        }

    def _validate_oracle(self) -> Dict[str, Any]:
        """Validate oracle tolerances"""
        if not 0 < ORACLE_CONFIG['pairing_tolerance'] < 1:
            return {
                'status': 'error',
                'message': 'Oracle pairing tolerance must lie in (0, 1)'
            }
        if ORACLE_CONFIG['plateau_limit'] < 1:
            return {
                'status': 'error',
                'message': 'Oracle plateau limit must be positive'
            }
        if ORACLE_CONFIG['interval_spacing'] <= 2 * ORACLE_CONFIG['interval_radius']:
            return {
                'status': 'error',
                'message': 'Oracle intervals overlap'
            }
        return {
            'status': 'valid',
            'message': 'Oracle configuration valid'
        }

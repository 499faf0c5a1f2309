'''
A module to create and share a few logging instances
'''

import logging
import os

from gaussampling.utils.conf import setting


def create_logger(filename,
                  level=None,
                  root_path=os.path.dirname(__file__)):
    '''
    Creates and returns a logger instance writing to
    `<root_path>/<filename>.log`.

    Calling it twice with the same name returns the same logger without
    stacking a second handler.
    '''
    frmt = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    logger = logging.getLogger('gaussampling.' + filename)
    logger.setLevel(level if level is not None else setting('LOGLEVEL', logging.INFO))
    if logger.handlers:
        return logger
    os.makedirs(root_path, exist_ok=True)
    fh = logging.FileHandler(os.path.join(root_path, filename + '.log'))
    fh.setFormatter(frmt)
    logger.addHandler(fh)
    return logger


_LOG_DIR = setting('ROOT_LOG_DIR', os.path.join(os.path.dirname(__file__), 'logs'))

debug_log = create_logger('debug', root_path=_LOG_DIR)
info_log = create_logger('info', root_path=_LOG_DIR)
error_log = create_logger('error', root_path=_LOG_DIR)
accuracy_log = create_logger('accuracy', root_path=_LOG_DIR)
run_log = create_logger('run', root_path=_LOG_DIR)

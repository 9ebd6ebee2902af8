# Copyright 2024 The altbisim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import logging
import os
import shutil
import tempfile

from altbisim.loggermaker import ConsoleLoggerMaker, LoggerMaker, close_logger


class FileLoggerMaker(LoggerMaker):
    def __init__(self, log_dir, n_handles):
        """Create a logger with n_handles file handles, with files in log_dir"""
        super(FileLoggerMaker, self).__init__("altbisim.check.files")
        self.log_dir = log_dir
        self.n_handles = n_handles

    def configure_logger(self):
        for i in range(self.n_handles):
            fh = logging.FileHandler(os.path.join(self.log_dir, "log-" + str(i)))
            self._logger.addHandler(fh)


class CheckLogger(object):
    def setup_method(self, _):
        self.temp_dir = tempfile.mkdtemp()

    def check_close_logger(self):
        """close_logger detaches and closes every handler."""
        the_logger = FileLoggerMaker(self.temp_dir, 5).logger
        handlers = the_logger.handlers[:]
        assert len(handlers) == 5

        close_logger(the_logger)
        assert the_logger.handlers == []
        assert all(h.stream is None for h in handlers)

    def check_configured_once(self):
        maker = FileLoggerMaker(self.temp_dir, 2)
        assert maker.logger is maker.logger
        assert len(maker.logger.handlers) == 2
        close_logger(maker.logger)

    def check_console_logger_levels(self):
        log_file = os.path.join(self.temp_dir, "altbisim.log")
        logger = ConsoleLoggerMaker(debug=False, log_file=log_file).logger
        try:
            assert logger.name == "altbisim"
            assert logger.level == logging.WARNING
            assert not logger.propagate
            levels = sorted(h.level for h in logger.handlers)
            assert levels == [logging.DEBUG, logging.WARNING]

            logging.getLogger("altbisim.bisim").debug("refined 3 pairs")
            for h in logger.handlers:
                h.flush()
            with open(log_file) as fd:
                assert "refined 3 pairs" in fd.read()
        finally:
            close_logger(logger)

    def check_console_logger_debug(self):
        logger = ConsoleLoggerMaker(debug=True).logger
        try:
            assert logger.level == logging.DEBUG
            assert len(logger.handlers) == 1
        finally:
            close_logger(logger)

    def teardown_method(self, _):
        if os.path.exists(self.temp_dir):
            shutil.rmtree(self.temp_dir)

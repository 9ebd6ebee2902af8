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


class LoggerMaker(object):
    """This class helps ensure programmatically configured loggers are configured only once."""

    def __init__(self, logger_name):
        self.logger_name = logger_name

    @property
    def logger(self):
        """Read-only logger attribute."""
        if not hasattr(self, '_logger'):
            self._logger = logging.getLogger(self.logger_name)

        if not self.configured:
            self.configure_logger()

        return self._logger

    @property
    def configured(self):
        """Return True iff the logger has been configured.

        logging.getLogger(self.logger_name) always yields the same object, so a logger with at least
        one handler is taken to be configured already.
        """
        return len(logging.getLogger(self.logger_name).handlers) > 0

    def configure_logger(self):
        raise NotImplementedError("configure_logger property must be implemented by a subclass")


class ConsoleLoggerMaker(LoggerMaker):
    """Configures the package-wide ``altbisim`` logger for one command-line run."""

    def __init__(self, debug=False, log_file=None, formatter=None):
        super(ConsoleLoggerMaker, self).__init__("altbisim")
        self.debug = debug
        self.log_file = log_file
        if formatter is None:
            from altbisim.command_line.defaults import ConsoleDefaults
            formatter = ConsoleDefaults.LOG_FORMATTER
        self.formatter = formatter

    def configure_logger(self):
        if self.configured:
            return

        level = logging.DEBUG if self.debug else logging.WARNING
        self._logger.setLevel(level)
        self._logger.propagate = False

        formatter = logging.Formatter(self.formatter)

        # stderr keeps stdout clean for --json documents
        ch = logging.StreamHandler()
        ch.setLevel(level)
        ch.setFormatter(formatter)
        self._logger.addHandler(ch)

        if self.log_file is not None:
            fh = logging.FileHandler(self.log_file)
            fh.setLevel(logging.DEBUG)
            fh.setFormatter(formatter)
            self._logger.addHandler(fh)


def close_logger(logger):
    """Filehandles etc are not closed automatically, so close them here"""
    if logger is not None:
        handlers = logger.handlers[:]
        for handler in handlers:
            handler.close()
            logger.removeHandler(handler)

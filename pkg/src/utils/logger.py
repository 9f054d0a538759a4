# Console output goes to stderr so stdout stays reserved for command results.
import gzip
import logging
import os
import re
import shutil
import socket
import sys
from datetime import datetime, timedelta, timezone
from logging.handlers import TimedRotatingFileHandler

server_name = os.getenv("VITAL_LINKAGE_SERVER_NAME", "vital-linkage")
log_level_name = os.getenv("VITAL_LINKAGE_LOG_LEVEL", "INFO").upper()
log_path = os.getenv("VITAL_LINKAGE_LOG_PATH")


def get_current_iso() -> str:
    """获取当前时间的 ISO 8601 格式字符串。

    Returns:
        str: 当前时间的 ISO 8601 格式字符串。

    """
    return datetime.now(timezone(timedelta(hours=0))).isoformat()


def gzip_rotator(source: str, dest: str) -> None:
    """Compress a rolled-over log file and remove the original."""
    try:
        with open(source, "rb") as old, gzip.open(dest, "wb") as compressed:
            shutil.copyfileobj(old, compressed)
        os.remove(source)
    except OSError as e:
        print(f"压缩日志文件失败: {e}", file=sys.stderr)


class MessageFormatter(logging.Formatter):
    """JSON-line formatter for the file handler."""

    def format(self, record: logging.LogRecord) -> str:
        """格式化日志记录，添加时间戳。

        Args:
            record (logging.LogRecord): 日志记录对象。

        Returns:
            str: 格式化后的日志字符串。

        """
        record.timestamp = get_current_iso()
        return super().format(record)

    def formatMessage(self, record: logging.LogRecord) -> str:  # noqa: N802
        # Quotes and braces would break the hand-built JSON line.
        record.message = record.message.replace("{", "【").replace("}", "】").replace('"', "``").replace("'", "`")
        return super().formatMessage(record)


class ColorFormatter(logging.Formatter):
    """Formatter that adds colors to specific keywords in log messages."""

    green = "\x1b[32;20m"
    yellow = "\x1b[33;20m"
    red = "\x1b[31;20m"
    bold_red = "\x1b[31;1m"
    reset = "\x1b[0m"

    keyword_colors = {
        "INFO": green,
        "DEBUG": yellow,
        "WARNING": yellow,
        "ERROR": red,
        "CRITICAL": bold_red,
    }

    format_str = "[%(levelname)s][%(asctime)s][%(funcName)s][%(filename)s:%(lineno)d] - %(message)s"

    def format(self, record: logging.LogRecord) -> str:
        """Format the log record and highlight the level keyword.

        Args:
            record (logging.LogRecord): The log record to format.

        Returns:
            str: The formatted log record as a string with color highlights.

        """
        msg = logging.Formatter(self.format_str, datefmt="%Y-%m-%d %H:%M:%S").format(record)
        if not sys.stderr.isatty():
            return msg
        keyword = record.levelname
        color = self.keyword_colors.get(keyword)
        if color is None:
            return msg
        return re.sub(rf"\b({re.escape(keyword)})\b", rf"{color}\1{self.reset}", msg, count=1)


class Logger:

    log_instance = None
    console_handler = None

    @staticmethod
    def _get_logger() -> logging.Logger:
        """获取日志记录器实例。

        Returns:
            logging.Logger: 配置完成的日志记录器实例。

        """
        if Logger.log_instance is not None:
            return Logger.log_instance
        log = logging.getLogger(server_name)
        log.setLevel(logging.DEBUG)
        log.propagate = False

        console_handle = logging.StreamHandler(sys.stderr)
        console_handle.setFormatter(ColorFormatter())
        console_handle.setLevel(getattr(logging, log_level_name, logging.INFO))
        log.addHandler(console_handle)
        Logger.console_handler = console_handle

        if log_path:
            os.makedirs(log_path, exist_ok=True)
            hostname = socket.gethostname()
            json_handler = TimedRotatingFileHandler(
                f"{log_path}/{server_name}-{hostname}.json", when="D", backupCount=7, encoding="utf-8"
            )
            json_handler.namer = lambda name: name + ".gz"
            json_handler.rotator = gzip_rotator
            fmt_json = (
                '{"@timestamp" : "%(timestamp)s", "funcName":"%(funcName)s", "service": "'
                + server_name
                + '", "filename": "%(filename)s", "line": "%(lineno)d", '
                '"levelname": "%(levelname)s", "message": "%(message)s"}'
            )
            json_handler.setFormatter(MessageFormatter(fmt_json))
            json_handler.setLevel(logging.DEBUG)
            log.addHandler(json_handler)

        Logger.log_instance = log
        return Logger.log_instance

    @staticmethod
    def set_console_level(level: str | int) -> None:
        """Change the console threshold, e.g. for ``--quiet``."""
        Logger._get_logger()
        if isinstance(level, str):
            level = getattr(logging, level.upper(), logging.INFO)
        Logger.console_handler.setLevel(level)


logger = Logger._get_logger()

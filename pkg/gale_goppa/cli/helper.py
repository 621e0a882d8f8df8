# -*- coding: utf-8 -*-


import inspect
import sys
from functools import cache
from importlib import resources
from typing import Any
from typing import TextIO

from ruamel.yaml import YAML

DEFAULT_LANGUAGE = "en_us"


@cache
def _load_language(pkg_name: str, language: str) -> dict[str, Any]:
    """
    读取包内的翻译文件

    :param pkg_name: 顶层包名
    :type pkg_name: str
    :param language: 语言名，如 ``en_us``
    :type language: str

    :return: 以包名为根的翻译表
    :rtype: dict[str, Any]
    """
    source = resources.files(pkg_name).joinpath("lang", f"{language}.yml")
    if not source.is_file():
        return {}
    with source.open(encoding="utf-8") as f:
        data = YAML(typ="safe").load(f)
    return (data or {}).get(pkg_name, {})


class Helper:
    """
    为命令行提供更简洁的API
    """

    pkg_name: str
    language: str
    translate_prefix: str

    def __init__(self) -> None:
        module = inspect.getmodule(inspect.stack()[0][0])
        package = module.__package__ if module else None
        self.pkg_name = (package or "gale_goppa").split('.')[0]

        self.language = DEFAULT_LANGUAGE
        self.translate_prefix = ""
        self.stream: TextIO | None = None

    def initialize(self, language: str, stream: TextIO | None = None) -> None:
        """
        延迟初始化方法

        :param language: 语言名
        :type language: str
        :param stream: 消息输出流，默认为标准错误
        :type stream: TextIO | None
        """
        self.language = language
        self.stream = stream
        self.translate_prefix = self._lookup("prefix") or ""

    def _lookup(self, translate_key: str) -> str | None:
        for language in (self.language, DEFAULT_LANGUAGE):
            node: Any = _load_language(self.pkg_name, language)
            for part in translate_key.split('.'):
                if not isinstance(node, dict) or part not in node:
                    node = None
                    break
                node = node[part]
            if isinstance(node, str):
                return node
        return None

    def tr(self, translate_key: str, *args: Any, **kwargs: Any) -> str:
        """
        获取翻译文本

        :param translate_key: 包内部翻译键
        :type translate_key: str
        :param args: 翻译文本的参数
        :type args: Any
        :param kwargs: 翻译文本的参数
        :type kwargs: Any

        :return: 翻译后的文本，找不到时返回翻译键本身
        :rtype: str
        """
        text = self._lookup(translate_key)
        if text is None:
            return f"{self.pkg_name}.{translate_key}"
        try:
            return text.format(*args, **kwargs)
        except (IndexError, KeyError):
            return text

    def ptr(self, translate_key: str, *args: Any, **kwargs: Any) -> str:
        """
        获取带前缀的翻译文本
        """
        return f"{self.translate_prefix}{self.tr(translate_key, *args, **kwargs)}"

    def reply(self, translate_key: str, *args: Any, **kwargs: Any) -> None:
        """
        输出带前缀的翻译文本
        """
        print(self.ptr(translate_key, *args, **kwargs), file=self.stream or sys.stderr)


h = Helper()


def initialize(language: str, stream: TextIO | None = None) -> None:
    """
    延迟初始化方法

    :param language: 语言名
    :type language: str
    :param stream: 消息输出流
    :type stream: TextIO | None
    """
    h.initialize(language, stream)


__all__ = (
    "DEFAULT_LANGUAGE",

    "Helper",

    "h",

    "initialize",
)

import logging

from autogen import UserProxyAgent

log = logging.getLogger("academic")


def launch(task):
    proxy = UserProxyAgent(
        "user_proxy",
        code_execution_config={"work_dir": "gpt_log/autogen", "use_docker": False},
    )
    log.info("launching %s", task)
    return proxy

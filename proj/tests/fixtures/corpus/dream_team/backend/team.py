from autogen import AssistantAgent, UserProxyAgent
from autogen.agentchat.contrib.web_surfer import WebSurferAgent
import autogen

from .ui import display_conversation


def assemble(llm_config):
    surfer = WebSurferAgent(
        "surfer",
        llm_config=llm_config,
        max_consecutive_auto_reply=4,
        browser_config={"viewport_size": 2048, "bing_api_key": None},
    )
    coder = AssistantAgent("coder", llm_config=llm_config, max_consecutive_auto_reply=4)
    executor = UserProxyAgent(
        "executor",
        human_input_mode="NEVER",
        max_consecutive_auto_reply=4,
        code_execution_config={"work_dir": "scratch"},
    )
    chat = autogen.GroupChat(agents=[surfer, coder, executor], messages=[], max_round=15)
    result = executor.initiate_chat(autogen.GroupChatManager(groupchat=chat), message="plan")
    display_conversation(result.chat_history)
    return result

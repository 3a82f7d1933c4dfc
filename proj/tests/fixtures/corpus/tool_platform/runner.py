from autogen import AssistantAgent, UserProxyAgent


def print_reply(recipient, messages, sender, config):
    print(f"{sender.name}: {messages[-1]['content']}")
    return False, None


def run(task, llm_config):
    assistant = AssistantAgent("assistant", llm_config=llm_config, max_consecutive_auto_reply=1)
    executor = UserProxyAgent(
        "executor",
        human_input_mode="NEVER",
        max_consecutive_auto_reply=1,
        code_execution_config={"work_dir": "tools", "use_docker": False},
    )
    assistant.register_reply([UserProxyAgent, None], reply_func=print_reply)
    return executor.initiate_chat(assistant, message=task, max_turns=1)

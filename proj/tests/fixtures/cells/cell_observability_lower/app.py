from autogen import AssistantAgent


def print_messages(recipient, messages, sender, config):
    print(messages[-1])
    return False, None


assistant = AssistantAgent("assistant")
assistant.register_reply([AssistantAgent, None], reply_func=print_messages)

from autogen import AssistantAgent, UserProxyAgent

assistant = AssistantAgent("assistant", max_consecutive_auto_reply=1)
user = UserProxyAgent("user", max_consecutive_auto_reply=0)
user.initiate_chat(assistant, message="Summarize the report.")

from autogen import UserProxyAgent

reviewer = UserProxyAgent("reviewer", human_input_mode="ALWAYS")

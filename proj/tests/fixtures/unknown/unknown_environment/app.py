from autogen import UserProxyAgent

user = UserProxyAgent("user", code_execution_config=False)

from autogen import AssistantAgent, UserProxyAgent

executor = UserProxyAgent("executor", code_execution_config=False)
planner = AssistantAgent(
    "planner",
    system_message="You are a planner. You must Execute the Function that the user names.",
)

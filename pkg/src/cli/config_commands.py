"""
Configuration command: config show, validate, example
"""

from ..nonassoc.models import CommandReport


def config_command(args, config) -> CommandReport:
    """
    Inspect the configuration

    Args:
        args: parsed arguments with .config_action
        config: ToolkitConfig instance
    """
    if args.config_action == "show":
        lines = ["🔧 Current configuration:"] + [f"   {line}" for line in str(config).splitlines()]
        return CommandReport(command="config show", result=config.to_dict(), lines=lines)

    if args.config_action == "validate":
        validation = config.validate_config()
        if validation["valid"]:
            lines = ["✅ Configuration is valid"]
        else:
            lines = ["❌ Configuration has issues:"] + [f"   • {issue}" for issue in validation["issues"]]
        # an invalid configuration is an input error
        exit_code = 0 if validation["valid"] else 2
        return CommandReport(command="config validate", result=validation, lines=lines, exit_code=exit_code)

    path = args.output
    config.save_env_example(path)
    return CommandReport(
        command="config example",
        result={"path": path},
        lines=[f"📄 Example configuration written to {path}"],
    )


def add_config_parser(subparsers) -> None:
    p = subparsers.add_parser("config", help="configuration management")
    p.add_argument("config_action", choices=["show", "validate", "example"], help="action")
    p.add_argument("--output", default="env_example", help="target of config example")
    p.set_defaults(handler=config_command)

import yaml

from .logger import logger


class MZVUtilitiesError(Exception):
    def __init__(self, message, info=None):
        super(MZVUtilitiesError, self).__init__(message)
        self.info = info


class DomainError(MZVUtilitiesError):
    """An argument lies outside the domain of a mathematical operation"""


class IndexParseError(DomainError):
    def __init__(self, message, token):
        super(IndexParseError, self).__init__(message, {"token": token})
        self.token = token


class ConfigError(MZVUtilitiesError):
    """Bad truncation bounds, prime windows, family names or config files"""


def domain_error(message, **info):
    """Log `message` and return a `DomainError` carrying `info`, ready to raise"""
    logger.error(message)
    return DomainError(message, info)


def chunk_list(lst, chunk_size):
    """Yield successive `chunk_size` chunks from `lst`"""
    for i in range(0, len(lst), chunk_size):
        yield lst[i : i + chunk_size]


def load_config_file(config_path):
    """Read a YAML config file whose keys mirror the command-line flags

    Keys may use dashes or underscores (`max-total-weight` or
    `max_total_weight`); they are normalized to underscores so they can be fed
    straight into `argparse.ArgumentParser.set_defaults`.

    Args:
        config_path (str): Path to the YAML file

    Returns:
        dict: Flag destination names mapped to their configured values
    """
    try:
        with open(config_path) as f:
            config = yaml.safe_load(f)
    except (OSError, yaml.YAMLError) as exc:
        message = f"Could not read config file `{config_path}`: {exc}"
        logger.error(message)
        raise ConfigError(message, {"config_path": str(config_path)})
    if config is None:
        return {}
    if not isinstance(config, dict):
        message = f"Config file `{config_path}` must contain a mapping of flag names"
        logger.error(message)
        raise ConfigError(message, {"config_path": str(config_path)})
    return {str(key).replace("-", "_"): value for (key, value) in config.items()}

def singleton(cls):
    """
    class decorator: one shared instance per process
    call `Cls.reset()` to drop the cached instance (used by tests and config reloads)
    """
    instances = {}

    def get_instance(*args, **kwargs):
        if cls not in instances:
            instances[cls] = cls(*args, **kwargs)
        return instances[cls]

    def reset():
        instances.pop(cls, None)

    get_instance.reset = reset
    get_instance.wrapped = cls
    return get_instance

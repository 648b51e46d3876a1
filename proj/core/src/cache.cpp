// placeholder: cache implementation follows

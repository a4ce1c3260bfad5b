"""Pipeline operations and process services.

Modules are imported explicitly (``from asdbench.services.metrics_service
import evaluate``); the handlers depend on the file manager, so this
package initializer stays import-free.
"""

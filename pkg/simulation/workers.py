"""
Reparto de tareas entre procesos con resultados en orden.

Clases:
    WorkerPool: Contexto que ejecuta tareas en línea o en un multiprocessing.Pool.
"""

import logging
import multiprocessing

LOGGER = logging.getLogger(__name__)


class WorkerPool:
    """
    Ejecuta funciones de nivel de módulo sobre listas de tareas.

    Con workers = 1 todo ocurre en el proceso actual. Los resultados se
    devuelven siempre en el orden de las tareas.

    Attributes:
        workers (int): Número de procesos.
    """

    def __init__(self, workers=1):
        self.workers = max(1, int(workers))
        self._pool = None

    def __enter__(self):
        if self.workers > 1:
            LOGGER.info("Inicializando %d procesos de trabajo", self.workers)
            self._pool = multiprocessing.Pool(processes=self.workers)
        return self

    def __exit__(self, *exc):
        if self._pool is not None:
            if exc[0] is None:
                self._pool.close()
            else:
                self._pool.terminate()
            self._pool.join()
            self._pool = None
        return False

    def map(self, funcion, tareas):
        tareas = list(tareas)
        if self._pool is None or len(tareas) <= 1:
            return [funcion(t) for t in tareas]
        return self._pool.map(funcion, tareas)

"""
Punto de entrada principal de la aplicación.
Este módulo ejecuta la línea de comandos y devuelve su código de salida.
"""
import sys

from coxlip import run

if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))

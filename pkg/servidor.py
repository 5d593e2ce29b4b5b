# servidor.py - Servicio HTTP (Flask) sobre los mismos comandos de la CLI

import os
from datetime import datetime

from flask import Flask, jsonify, request
from flask_cors import CORS

from cli import RunConfig, cmd_algebra, cmd_count, cmd_verify, validate_bounds
from config import get_logger, get_setting, validate_environment_variables
from errors import FactorisationError
from suites import ANCHORS, SUITE_ANCHOR, SUITES

logger = get_logger(__name__)

# Validar variables al arrancar, igual que la CLI
validate_environment_variables()

app = Flask(__name__)

CORS(app, resources={
    r"/api/*": {
        "origins": "*",
        "methods": ["GET", "POST", "OPTIONS"],
        "allow_headers": ["Content-Type"]
    }
})

# Campos aceptados en el cuerpo JSON de cada endpoint
REQUEST_FIELDS = {
    'count': ('family', 'target', 'partition', 'genus', 'root', 'order', 'n', 'method', 'unsafe'),
    'algebra': ('n', 'expr', 'unsafe'),
    'verify': ('suite', 'n', 'gmax', 'kmax', 'unsafe'),
}

HANDLERS = {
    'count': cmd_count,
    'algebra': cmd_algebra,
    'verify': cmd_verify,
}


def build_config(command, data):
    """RunConfig a partir del cuerpo JSON; ignora campos desconocidos"""
    values = {k: data[k] for k in REQUEST_FIELDS[command] if data.get(k) is not None}
    # un solo proceso por petición; el paralelismo es cosa de la CLI
    return RunConfig(command=command, workers=1, **values)


def run_command(command):
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        return jsonify({'error': 'El cuerpo debe ser un objeto JSON'}), 400
    try:
        config = build_config(command, data)
        validate_bounds(config)
        output = HANDLERS[command](config)
    except (FactorisationError, TypeError) as e:
        logger.warning("peticion %s rechazada: %s", command, e)
        return jsonify({'error': str(e)}), 400
    except Exception as e:
        logger.error("error inesperado en %s: %s", command, e)
        return jsonify({'error': str(e)}), 500

    return jsonify({
        'command': command,
        'config': config.to_dict(),
        'results': output.results,
        'pass': output.passed,
    }), 200


@app.route('/health', methods=['GET']) # Endpoint de salud
def health_check():
    """Health check con las cotas activas"""
    return jsonify({
        'status': 'healthy',
        'timestamp': datetime.utcnow().isoformat(),
        'suites': len(SUITES),
        'bounds': {
            name: get_setting(name)
            for name in ('LIST_N_MAX', 'LIST_G_MAX', 'DP_N_MAX', 'RELATION_N_MAX')
        },
    }), 200


@app.route('/api/suites', methods=['GET']) # Suites de verificación disponibles
def list_suites():
    return jsonify({
        'suites': [
            {'name': name, 'description': description, 'anchor': SUITE_ANCHOR[name]}
            for name, (_, description) in sorted(SUITES.items())
        ],
        'anchors': {anchor: list(names) for anchor, names in sorted(ANCHORS.items())},
    })


@app.route('/api/count', methods=['POST'])
def count_endpoint():
    return run_command('count')


@app.route('/api/algebra', methods=['POST'])
def algebra_endpoint():
    return run_command('algebra')


@app.route('/api/verify', methods=['POST']) # Ejecuta una suite; puede tardar
def verify_endpoint():
    return run_command('verify')


@app.route("/")
def home():
    return "Servicio de factorizaciones en el grupo simétrico. Ver /health y /api/suites."


if __name__ == "__main__":
    port = int(os.environ.get("PORT", get_setting('PORT')))
    app.run(host="0.0.0.0", port=port)

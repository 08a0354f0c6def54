import json
import threading
import time
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest


class StubChatServer:
    """Chat-completion stub whose behavior is switchable per test:
    'ok' returns a fixed completion, 'error' a 500, 'timeout' stalls."""

    def __init__(self):
        self.mode = "ok"
        self.completion = "Consider adding acceptance criteria."
        self.requests = []
        stub = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                try:
                    self._respond()
                except (BrokenPipeError, ConnectionResetError):
                    pass  # client gave up (timeout mode)

            def _respond(self):
                length = int(self.headers.get("Content-Length", 0))
                body = json.loads(self.rfile.read(length) or b"{}")
                stub.requests.append({"path": self.path, "body": body})
                if stub.mode == "timeout":
                    time.sleep(5)
                if stub.mode == "error":
                    self.send_response(500)
                    self.end_headers()
                    self.wfile.write(b"{}")
                    return
                payload = {
                    "choices": [{"message": {"role": "assistant", "content": stub.completion}}]
                }
                data = json.dumps(payload).encode()
                self.send_response(200)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(data)))
                self.end_headers()
                self.wfile.write(data)

            def log_message(self, *args):
                pass

        self.server = HTTPServer(("127.0.0.1", 0), Handler)
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)
        self.thread.start()

    @property
    def base_url(self):
        host, port = self.server.server_address
        return f"http://{host}:{port}"

    def close(self):
        self.server.shutdown()
        self.server.server_close()


@pytest.fixture
def stub_chat():
    server = StubChatServer()
    yield server
    server.close()

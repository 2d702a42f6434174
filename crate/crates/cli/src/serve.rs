//! Serve mode: one engine session per WebSocket connection.

use std::io;
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::path::Path;
use std::sync::Arc;
use std::thread;
use std::time::Duration;

use plotforge::engine::{Engine, EventReceiver, FrameEvent, Reply};
use plotforge::export::encode_png;
use plotforge::layout::MIN_CANVAS;
use plotforge::Scene;
use tungstenite::{Message, WebSocket};

use crate::commands::{load, CliError};
use crate::protocol::{encode_frame, ClientMsg, CoordEntry, Request, ServerMsg};

/// Poll interval for forwarding frames between client reads.
const POLL: Duration = Duration::from_millis(2);

pub struct Server {
    listener: TcpListener,
    scene: Arc<Scene>,
}

impl Server {
    pub fn bind(scene: Scene, addr: &str) -> io::Result<Server> {
        Ok(Server {
            listener: TcpListener::bind(addr)?,
            scene: Arc::new(scene),
        })
    }

    pub fn local_addr(&self) -> io::Result<SocketAddr> {
        self.listener.local_addr()
    }

    /// Accepts connections forever, one thread each.
    pub fn serve(self) {
        for stream in self.listener.incoming().flatten() {
            let scene = self.scene.clone();
            thread::spawn(move || {
                let _ = session(stream, &scene);
            });
        }
    }

    /// Serves on a background thread and returns the bound address.
    pub fn spawn(self) -> io::Result<SocketAddr> {
        let addr = self.local_addr()?;
        thread::spawn(move || self.serve());
        Ok(addr)
    }
}

pub fn run(spec: &Path, bind: &str, port: u16) -> Result<(), CliError> {
    let scene = load(spec)?;
    let server = Server::bind(scene, &format!("{bind}:{port}"))
        .map_err(|e| CliError::Io(format!("cannot bind {bind}:{port}: {e}")))?;
    let addr = server.local_addr().map_err(|e| CliError::Io(e.to_string()))?;
    println!("listening on ws://{addr}");
    server.serve();
    Ok(())
}

struct Session {
    scene: Arc<Scene>,
    engine: Option<(Engine, EventReceiver<FrameEvent>)>,
    last_frame: u64,
}

fn send(ws: &mut WebSocket<TcpStream>, msg: &ServerMsg) -> tungstenite::Result<()> {
    ws.send(Message::text(serde_json::to_string(msg).expect("message serializes")))
}

fn error(id: Option<u64>, code: &str, message: impl Into<String>) -> ServerMsg {
    ServerMsg::Error {
        id,
        code: code.into(),
        message: message.into(),
    }
}

impl Session {
    fn handle(&mut self, text: &str) -> ServerMsg {
        let req: Request = match serde_json::from_str(text) {
            Ok(r) => r,
            Err(e) => return error(None, "BAD_MESSAGE", e.to_string()),
        };
        let id = req.id;
        match (&req.msg, &self.engine) {
            (ClientMsg::Hello { .. }, Some(_)) => error(Some(id), "BAD_MESSAGE", "session already started"),
            (ClientMsg::Hello { viewport }, None) => {
                if viewport.width < MIN_CANVAS || viewport.height < MIN_CANVAS {
                    return error(
                        Some(id),
                        "CANVAS_TOO_SMALL",
                        format!("viewport {}x{} is below {MIN_CANVAS}x{MIN_CANVAS}", viewport.width, viewport.height),
                    );
                }
                let engine = Engine::start((*self.scene).clone(), viewport.width, viewport.height);
                let rx = engine.subscribe();
                self.engine = Some((engine, rx));
                ServerMsg::Ack { id }
            }
            (_, None) => error(Some(id), "NO_SESSION", "send hello first"),
            (msg, Some((engine, _))) => {
                let cmd = msg.command().expect("non-hello messages map to commands");
                match engine.submit(cmd) {
                    Ok(Reply::Coords(c)) => ServerMsg::Coords {
                        id,
                        coords: c.iter().map(CoordEntry::from).collect(),
                    },
                    Ok(Reply::Tree(tree)) => ServerMsg::Tree { id, tree },
                    Ok(_) => ServerMsg::Ack { id },
                    Err(e) => error(Some(id), &e.code, e.message),
                }
            }
        }
    }

    /// Frames and render failures presented since the last call, oldest
    /// first. The initial frame may predate the subscription, so the
    /// displayed frame is checked as well.
    fn pending(&mut self) -> Vec<Message> {
        let Some((engine, rx)) = &self.engine else {
            return Vec::new();
        };
        let mut events: Vec<FrameEvent> = rx.try_iter().collect();
        if let Some(f) = engine.displayed() {
            if f.generation > self.last_frame && !events.iter().any(|e| matches!(e, FrameEvent::Presented(p) if p.generation == f.generation)) {
                events.insert(0, FrameEvent::Presented(f));
            }
        }
        let mut out = Vec::new();
        for ev in events {
            match ev {
                FrameEvent::Presented(f) if f.generation > self.last_frame => {
                    self.last_frame = f.generation;
                    out.push(Message::binary(encode_frame(f.generation, &encode_png(&f.raster))));
                }
                FrameEvent::Presented(_) => {}
                FrameEvent::Failed { code, message, .. } => {
                    let m = serde_json::to_string(&error(None, &code, message)).expect("message serializes");
                    out.push(Message::text(m));
                }
            }
        }
        out
    }
}

fn session(stream: TcpStream, scene: &Arc<Scene>) -> tungstenite::Result<()> {
    stream.set_nodelay(true)?;
    let mut ws = tungstenite::accept(stream).map_err(|e| match e {
        tungstenite::HandshakeError::Failure(e) => e,
        tungstenite::HandshakeError::Interrupted(_) => tungstenite::Error::ConnectionClosed,
    })?;
    ws.get_mut().set_read_timeout(Some(POLL))?;
    let mut s = Session {
        scene: scene.clone(),
        engine: None,
        last_frame: 0,
    };
    loop {
        for m in s.pending() {
            ws.send(m)?;
        }
        match ws.read() {
            Ok(Message::Text(t)) => {
                let reply = s.handle(t.as_str());
                send(&mut ws, &reply)?;
            }
            Ok(Message::Binary(_)) => send(&mut ws, &error(None, "BAD_MESSAGE", "binary messages are server-to-client only"))?,
            Ok(Message::Close(_)) => break,
            Ok(_) => {}
            Err(tungstenite::Error::Io(e)) if matches!(e.kind(), io::ErrorKind::WouldBlock | io::ErrorKind::TimedOut) => {}
            Err(tungstenite::Error::ConnectionClosed | tungstenite::Error::AlreadyClosed) => break,
            Err(e) => return Err(e),
        }
    }
    if let Some((engine, _)) = &s.engine {
        engine.shutdown();
    }
    Ok(())
}
